# -*- coding: utf-8 -*-
"""
Teugels martingale bases and chaos expansions for multidimensional Levy processes.

"""
