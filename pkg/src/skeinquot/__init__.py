"""Exact arithmetic in the skein module of the connected sum of two solid tori,
presented as the quotient R[x1, x2, y] / G over R = Z[q^+-1]."""

from .qlaurent import QLaurent, Q, bracket, qint
from .ringcore import SkeinPoly, XPoly, TwoVarLaurent, X1, X2, Y, serialize, deserialize
from .generators import (
    gen_G, gen_Gp, gen_Gpp, gen_J, gen_Q, gen_U, gen_Up, gen_Upp,
    gen_sigma, gen_F, gen_W, SkeinFamilies,
)
from .quotient import (
    membership, normal_form, classify, torsion_split, normal_form_localized,
    Certificate, NormalForm, TorsionSplit, LocalizedPoly, Classification,
)
from .exprparse import parse_poly

__version__ = "0.1.0"
