//! Graphs, parking functions, ballot sequences and labeled trees.

mod ballot;
mod chromatic;
mod graph;
mod linial;
mod parking;
mod trees;

pub use ballot::{
    catalan_by_recurrence, catalan_number, catalan_region_to_ballot, enumerate_ballot_sequences,
    has_positive_partial_sums, in_base_chamber, is_ballot,
};
#[cfg(feature = "parallel")]
pub use chromatic::count_acyclic_orientations_par;
pub use chromatic::{
    acyclic_orientations, chromatic_by_deletion_contraction, chromatic_polynomial, count_acyclic_orientations,
    count_acyclic_orientations_seq, count_proper_colorings, region_to_orientation, Orientation, MAX_ORIENTATION_EDGES,
};
pub use graph::Graph;
pub use linial::{linial_chi_formula, linial_region_formula};
#[cfg(feature = "parallel")]
pub use parking::enumerate_parking_functions_par;
pub use parking::{
    enumerate_parking_functions, enumerate_parking_functions_seq, is_parking_function, is_parking_function_sorted,
    pak_labeling, shi_base_signs, PakLabeling, MAX_PAK_N, MAX_PARKING_LENGTH,
};
pub use trees::{
    count_alternating_trees, inversions, is_alternating, prufer_to_edges, tree_inversion_histogram, MAX_ALTERNATING_N,
    MAX_INVERSION_N,
};
