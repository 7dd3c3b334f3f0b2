//! Exact linearization of HNN extensions and doubles of matrix groups along a
//! cyclic subgroup, with the supporting word reduction, spectral diagnostics
//! and unit-torus constructions.

pub mod exact;
pub mod linearize;
pub mod spectra;
pub mod unittorus;
pub mod words;
