//! Exact computational topology for finite semi-simplicial sets.
//!
//! The crate is organised around a small number of layers:
//!
//! * [`matrix`] — dense exact integer matrices and Smith normal form;
//! * [`field`] — exact field arithmetic (rationals and prime fields) and
//!   field-valued matrices;
//! * [`chain`] — chain complexes over `Z`, `Q` or `F_p`, homology with
//!   torsion, mapping cones;
//! * [`semisimp`] — finite semi-simplicial sets (optionally augmented or
//!   pointed), validation, realization chain complexes, levelwise cones;
//! * [`constructions`] — complexes of injective words, the half-smash
//!   suspension model and its comparison maps;
//! * [`specseq`] — first-quadrant spectral sequences of double complexes
//!   over a field, with full page computation and abutment verification;
//! * [`surfaces`] — surface type bookkeeping, stabilization maps and
//!   arc-cut arithmetic;
//! * [`ranges`] — the stability-range recurrence systems and their
//!   pointwise-greatest solutions.
//!
//! The core is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion crate `sshom-cli`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod chain;
pub mod constructions;
pub mod field;
pub mod matrix;
pub mod ranges;
pub mod semisimp;
pub mod specseq;
pub mod surfaces;
