# -*- coding: utf-8 -*-
"""
Package of utility functions used across levychaos.

"""
