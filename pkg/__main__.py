#!/usr/bin/env python
# -*- coding: utf-8 -*-
import runpy

if __name__ == "__main__":
    runpy.run_module("ordlines", run_name="__main__")
