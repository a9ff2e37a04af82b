"""GF(2^m) arithmetic, NAND-only multiplier netlists, BCH codec, fault campaigns."""

from ._core import (  # noqa: F401
    BchCode,
    FieldContext,
    FtgfError,
    Netlist,
    __version__,
    affine_solve,
    berlekamp_massey,
    brs_find_roots,
    build_code,
    build_nand_multiplier_netlist,
    chien_search,
    decode,
    encode,
    eval_multiplier_netlist,
    linearized_eval,
    mul_interleaved,
    mul_reference,
    run_campaign,
    syndromes,
    syndromes_reencode,
)
