//! Near-symmetric chord families in the twelve-tone octave: perturbations of
//! symmetric pitch-class cells, parsimonious voice leading between them, the
//! transformations that connect them, and the graphs those transformations
//! span.
//!
//! ```
//! use nearsym::{apply, Chord, Genus, Transformation};
//!
//! let c = Chord::parse("C+", Genus::Triads).unwrap();
//! let p = Transformation::parse("P", Genus::Triads).unwrap();
//! assert_eq!(apply(p, &c).unwrap().to_string(), "C-");
//! ```

pub mod chord;
pub mod cli;
pub mod error;
pub mod export;
pub mod pcset;
pub mod region;
pub mod spelling;
pub mod symmetry;
pub mod transform;
pub mod verify;
pub mod voiceleading;

pub use chord::{
    arthropod_collection, name_of, parent_symmetric_cell, perturb, root_cell, Chord, Direction,
    Genus, Modality, Perturbation,
};
pub use error::{Error, Result};
pub use export::{export_graph, export_graph_with, Format, RegionDocument};
pub use pcset::{interval_class_vector, prime_form, PcSet, PitchClass, SetClassLabel};
pub use region::{
    complementarity_pairs, enumerate_smooth_cycles, polar, region_of, regions, Edge, Region,
    RegionKind, SmoothCycle,
};
pub use spelling::Accidentals;
pub use symmetry::{cycle_from_generator, generators_of_z12, symmetric_partition, SymmetricPartition};
pub use transform::{
    apply, apply_sequence, catalog, parse_sequence, transformation_between, Kind, Transformation,
};
pub use voiceleading::{ssd_neighbors, vl_relation, VoiceLeading};
