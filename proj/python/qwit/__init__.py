"""Entanglement-witness toolkit: thin wrapper around the C++ core."""

from _qwit import (  # noqa: F401
    DensityMatrix,
    ProductState,
    Witness,
    bell_state,
    build_witness,
    calibrate,
    detection_threshold,
    edge_ppt_state,
    feature_vector,
    generate_dataset,
    ghz_state,
    is_ppt,
    min_over_product_states,
    optimality_certificate,
    partial_transpose,
    ppt_boundary,
    pptes_scan,
    read_witness,
    reconstruct_state,
    reference_names,
    reference_witness,
    verify_witness,
    werner,
    write_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
