# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-08
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : All methods.
"""


from .sanalytic import *
from .sbase import *
from .sbound import *
from .scache import *
from .scli import *
from .sprime import *
from .squad import *
from .sreport import *
