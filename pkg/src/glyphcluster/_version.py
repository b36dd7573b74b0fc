#!/usr/bin/env python
# coding: utf-8

version_info = (0, 1, 0, 'dev0')
__version__ = ".".join(map(str, version_info))
