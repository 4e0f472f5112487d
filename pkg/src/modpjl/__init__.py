"""Exact character theory for the mod-p Jacquet-Langlands map between
GL2(F_q) and F_{q^2}^x, with Breuil-Mezard functional transport."""

from .bmfunc import (
    CuspidalType,
    IotaFunctional,
    PSType,
    ScalarType,
    iota_transport,
    serre_weights,
    sigma_tame,
    span_rank,
    verify_thm42,
)
from .chars import (
    BrauerIrredLabel,
    Cuspidal,
    DetTwist,
    GrothElt,
    PrincipalSeries,
    SteinbergTwist,
    Weight,
    brauer_irred,
    decompose,
    f_lambda,
    f_lambda_D,
    l_character,
    ordinary_char,
)
from .classfn import GL2, LX, ClassFn, class_of, enumerate_ss_classes
from .jl import dl_character, jl_basis, jl_classfn, jl_star
from .scalars import CycInt, FlElem, field_ctx, teich

__all__ = [
    "GL2",
    "LX",
    "BrauerIrredLabel",
    "ClassFn",
    "CuspidalType",
    "Cuspidal",
    "CycInt",
    "DetTwist",
    "FlElem",
    "GrothElt",
    "IotaFunctional",
    "PSType",
    "PrincipalSeries",
    "ScalarType",
    "SteinbergTwist",
    "Weight",
    "brauer_irred",
    "class_of",
    "decompose",
    "dl_character",
    "enumerate_ss_classes",
    "f_lambda",
    "f_lambda_D",
    "field_ctx",
    "iota_transport",
    "jl_basis",
    "jl_classfn",
    "jl_star",
    "l_character",
    "ordinary_char",
    "serre_weights",
    "sigma_tame",
    "span_rank",
    "teich",
    "verify_thm42",
]
