//! Exact constructions of birational involutions of the projective plane:
//! polynomial arithmetic over the rationals, rational maps, the De Jonquieres,
//! Geiser and Bertini involutions, fixed curves, and Picard lattices.

#![allow(clippy::needless_range_loop)]

pub mod exactpoly;
pub mod fixedcurve;
pub mod involutions;
pub mod picard;
pub mod projmaps;
pub mod rng;
