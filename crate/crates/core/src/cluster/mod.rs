//! Quivers, seeds and mutation.

pub mod canon;
pub mod modular;
pub mod quiver;
pub mod search;
pub mod seed;

pub use canon::{automorphisms, canonical_form, isomorphisms, CanonicalForm};
pub use modular::{check_relations, parse_generators, reach_eshape, EShape, Generator, ModularAction, RelationReport, WordOrder};
pub use quiver::{Quiver, QuiverJson};
pub use search::{mutation_class, mutation_class_search, MutationWord, SearchHit, DEFAULT_MAX_NODES};
pub use seed::Seed;
