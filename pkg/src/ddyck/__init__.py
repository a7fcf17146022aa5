"""Restricted d-Dyck paths, d-restricted polyominoes and restricted non-crossing partitions."""

from .dyck import (
    DyckPath,
    RunFactorization,
    Step,
    catalan,
    count_d_dyck,
    enumerate_d_dyck,
    enumerate_dyck,
    is_d_dyck,
    parse_path,
    peak_vector,
    reflect,
    run_factorization,
    valley_vector,
)
from .genfunc import IntPolynomial, RationalGF, rational_equal, series_coeffs, t_gf, v_gf, vstar_gf
from .partitions import (
    SetPartition,
    bell_d,
    d_dyck_to_ncd,
    enumerate_set_partitions,
    graph_representation,
    is_ncd_member,
    is_non_crossing,
    is_pid_member,
    ncd_to_d_dyck,
    phi,
    phi_inverse,
    reverse_partition,
)
from .polyomino import (
    CellCoord,
    Dccp,
    area,
    enumerate_d_polyominoes,
    enumerate_dccp,
    ipl,
    ipl_bfs_oracle,
    is_d_restricted,
    path_to_polyomino,
    polyomino_to_path,
    tipl,
    total_tipl,
)

__version__ = "0.1.0"
