//! The semigroup of triples `(i, j, [a))` over an ω-closed family of rays,
//! its natural order, congruences on finite balls, and homomorphisms.

pub mod ball;
pub mod cli;
pub mod congruence;
pub mod element;
pub mod error;
pub mod family;
pub mod morphisms;
pub mod oracle;
pub mod order;
pub mod text;
pub mod verify;

pub use ball::{make_ball, BallUniverse};
pub use congruence::{
    congruence_closure, projection_kernel, sigma_partition, CongruencePartition, CongruenceVerdict,
    CutoffRestriction, PartitionExport,
};
pub use element::{
    embed, inverse, is_idempotent, multiply, project, sigma_class, sigma_equivalent,
    BicyclicElement, Element, SigmaClass,
};
pub use error::{Error, Result};
pub use family::{
    family_canonicalize, is_inductive, is_omega_closed, CanonicalFamily, Cutoff, CutoffSet,
    NormalizedFamily, SubsetPrefix,
};
pub use morphisms::{
    enumerate_retracts, fixed_points, isomorphic, refute_lower_retraction, retraction_hk,
    search_generator_consistent_maps, shift_isomorphism, verify_homomorphism, ElementMap,
    RefutationWitness, RetractDescriptor, RetractKind, Value,
};
pub use order::{hasse_covers, hasse_dot, idempotent_leq, natural_leq};
pub use text::{parse_bicyclic, parse_element, parse_family, parse_interval};
