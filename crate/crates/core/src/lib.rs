//! Resolution of closed braid diagrams into the partition basis of `V_n`,
//! the quotient of the Iwahori-Hecke algebra `H_n` by `ab = ba`, together
//! with the crossing-change analysis built on it.

pub mod braid;
pub mod ring;
pub mod resolve;
pub mod homfly;
pub mod analysis;
pub mod mtws;
pub mod acceptance;
pub mod cli;

pub use braid::{parse_word, BraidWord, CrossingId, Letter, Partition, Permutation, Sign};
pub use resolve::{label_only, resolution_tree, resolve, Label, LabelMap};
pub use ring::{LaurentAB, SkeinVector, Unit};
