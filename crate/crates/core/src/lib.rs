//! Exact quantum-number bookkeeping, reaction classification, handle calculus
//! and observables, without `std`.

#![no_std]
extern crate alloc;

pub mod handle;
pub mod numbers;
pub mod observables;
pub mod particle;
pub mod propagator;
pub mod rational;
pub mod reaction;
pub mod registry;
