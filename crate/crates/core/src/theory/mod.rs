//! Structural routines behind the minimum-degree bounds: chromatic
//! parameters, the F2 auxiliary reduction and the constructive triangle
//! finders for bowtie-shaped cluster structures.

mod chromatic;
mod f2;
mod finders;

pub use chromatic::{chromatic_parameters, ChromaticProfile, Hcf, MAX_CHROMATIC_ORDER};
pub use f2::{
    admissible_c, auxiliary_reduction, classify_f2_copies, f2_tiling_exact, AuxReduction, F2Classification,
    F2Copy, F2Tiling,
};
pub use finders::{
    five_part_tiler, three_part_mono_finder, FinderPath, FinderResult, FivePartTiling, FIVE_PART_BETA,
};
