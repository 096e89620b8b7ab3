#!/usr/bin/env python
# -*- coding: utf-8 -*-
from ordlines.cli import main

if __name__ == "__main__":  # pragma: no cover
    main(prog_name="ordlines")
