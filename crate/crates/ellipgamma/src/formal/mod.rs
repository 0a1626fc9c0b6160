//! Exact symbolic verification of the product identities, mirroring the
//! index rearrangements of their proofs: factor multisets with exact rational
//! exponents, root-of-unity collapse, and truncated integer power series.
//! No floating point enters this module's arithmetic.

mod enumerate;
mod factor;
mod series;
mod verify;

pub use enumerate::factors_of_gamma;
pub use factor::{collapse_unity_roots, multiset_diff, Factor, FactorKey, FactorMultiset, Side};
pub use series::{series_mul, series_recip, TruncatedBiseries};
pub use verify::{
    verify_lemma1_formal, verify_lemma2_formal, verify_mult1_formal, Mismatch, VerificationResult,
};
