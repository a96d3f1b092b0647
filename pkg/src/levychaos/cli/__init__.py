# -*- coding: utf-8 -*-
"""
Package for the levychaos command line interface.

"""
