//! Exact algebra of Boolean function classes.
//!
//! The crate provides, over packed truth tables with cached Zhegalkin (ANF)
//! views:
//!
//! - the function algebra: minors, sums, negations, derivatives, and the
//!   invariants (degree, characteristic rank, parity, endpoint profile) that
//!   drive classification ([`boolfn`]);
//! - the nineteen named clones with membership predicates, generator bases,
//!   and bounded enumeration ([`clones`]);
//! - classification of the closure of a finite generator set under
//!   composition with idempotent linear functions, together with an
//!   independent brute-force closure oracle at bounded arity ([`closure`]);
//! - bounded verification of class stability under right and left clone
//!   composition, including the full stability table ([`stability`]);
//! - the finite-field analogue over GF(p) for small primes ([`gfp`]).
//!
//! Bit order: argument `x1` is the least significant index bit of every
//! truth table.
//!
//! ```
//! use clonoid::{classify, closure_oracle, parse_fn};
//!
//! let mu = parse_fn("x1*x2 + x1*x3 + x2*x3").unwrap();
//! let class = classify(std::slice::from_ref(&mu));
//! assert_eq!(class.canonical_name(), "D2 ∩ X1 ∩ C0E1");
//!
//! // the brute-force closure agrees with the classification at arity 3
//! let family = closure_oracle(&[mu], 3).unwrap();
//! assert!(family.members(3).all(|f| class.member(&f)));
//! ```

mod bits;
pub mod boolfn;
pub mod clones;
pub mod closure;
mod error;
pub mod gfp;
pub mod parse;
pub mod stability;

pub use boolfn::{monster, monster_embedded, BoolFn, MinorMap, MonomialSet, Signature, MAX_ARITY};
pub use clones::{enumerate, generate, CloneId, ALL_CLONES};
pub use closure::{
    classify, closure_oracle, enumerate_descriptors, sig_table, Block, Cap, ClassDescriptor,
    SIG_MEMO_CAP,
};
pub use error::{Error, Result};
pub use gfp::{gfp_classify, gfp_closure_oracle, GFpClass, GFpFn};
pub use parse::{parse_fn, print_fn, print_table};
pub use stability::{
    compose_classes, left_stable, right_stable, star, table3_rows, verify_table3, FnClass,
    Provenance, Side, StabilityRecord, Table3Report, Table3Row, Verdict, Witness,
};

/// Default arity cap for exhaustive machinery; overridable per call.
pub const DEFAULT_ARITY_CAP: usize = 4;

/// Hard ceiling for exhaustive suites.
pub const HARD_ARITY_CAP: usize = 5;
