# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-02
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Explicit Siegel zero bound verification method set.

Modules
-------
sall : All methods.
sanalytic : Zeta evaluation and line integral constant methods.
sbase : Base methods.
sbound : Case analysis lower bound and class number asymptotic methods.
scache : Prime power table binary cache methods.
scli : Command line methods.
sprime : Prime power sieve and reciprocal sum methods.
squad : Imaginary quadratic field arithmetic methods.
sreport : Verification report methods.
"""


from .sbound import theorem1_certificate
