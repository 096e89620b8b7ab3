#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import find_packages, setup

version = "0.1.0"

with open("README.md", encoding="utf-8") as readme_file:
    readme = readme_file.read()

requirements = ["click>=7.1"]

test_requirements = ["pytest>=6", "hypothesis>=6"]

setup(
    name="ordlines",
    version=version,
    description=("Exact counts of ordinary lines and spanned lines/planes of finite point sets"),
    long_description=readme,
    long_description_content_type="text/markdown",
    author="wangzhiwei",
    author_email="wangzhiwei@patsnap.com",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={"tests": test_requirements},
    license=None,
    zip_safe=False,
    keywords=[
        "ordlines",
        "Python",
        "incidence geometry",
        "ordinary lines",
    ],
    entry_points={"console_scripts": ["ordlines = ordlines.__main__:main"]},
)
