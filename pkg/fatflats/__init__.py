# fatflats: dimensions of linear systems through fat codimension 2 flats
from __future__ import division, absolute_import
from fatflats import common
from fatflats import exactmath
from fatflats import hilbert
from fatflats import bounds
from fatflats import veneroni
from fatflats import oracle
from fatflats import classify
from fatflats.common import FatFlatValueError, load_config
from fatflats.diagnostics import *
from fatflats.hilbert import FatFlatScheme, s_formula, vdim_recursive
from fatflats.veneroni import LinearSystem, veneroni_pullback
