# -*- coding: utf-8 -*-
"""
Package of test utilities shared by the levychaos specifications.

"""
