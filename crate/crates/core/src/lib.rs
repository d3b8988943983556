//! Exact Burnside ring computations for finite groups of order at most 256:
//! subgroup lattices, tables of marks, ghost ring membership and Artin
//! exponents.

pub mod artin;
pub mod bitset;
pub mod burnside;
pub mod catalog;
pub mod error;
pub mod group;
pub mod lattice;
pub mod numtheory;
pub mod ratio;
pub mod spec;
pub mod subgroup;
pub mod sweep;

pub use artin::{
    artin_exponent_congruence, artin_exponent_marks, closed_form_predictor, congruence_pairs, count_c_sets, cyclic_count,
    exponent_report, family_vector, recognize_2group, sylow_reduction_report, Branch, CongruencePair, CongruenceSystem,
    ExponentReport, Family, Method, Prediction, ReportOptions, TwoGroupKind,
};
pub use bitset::{ElemSet, MAX_ORDER};
pub use burnside::{
    build_mark_table, conductor, ghost_of, mark, multiply_basis, solve_membership, solve_rational, BurnsideElement,
    GhostVector, MarkTable, Membership,
};
pub use error::{Error, Result};
pub use group::GroupTable;
pub use lattice::{enumerate_subgroups, enumerate_subgroups_with, LatticeCache, LatticeOptions, SubgroupClass, SubgroupLattice};
pub use spec::{build_group, parse_group_spec, GroupSpec};
pub use subgroup::{
    center, centralizer, commutator_closure, cosets, derived_subgroup, generated_subgroup, is_normal_in, Subgroup,
};
pub use ratio::Ratio;
pub use sweep::{run_sweep, run_sweep_with, Check, RunResult, Status, SweepConfig};
