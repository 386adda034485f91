//! # bitinfo
//!
//! Tools for asking *where* the label information lives inside a binary
//! feature representation.
//!
//! Given a representation `B` of `m` Bernoulli components and a discrete
//! label `Y`, the crate computes:
//!
//! - the information profile `f_B(n)`: average mutual information between
//!   one component and `Y` once `n` other components are observed, and its
//!   cumulative form `F_B(n)` (average information of an `n`-subset);
//! - the view count `m / n`: how many non-intersecting `n`-subsets carrying
//!   `F_B(n)` bits the representation can supply;
//! - the average interaction `C_B(n)` (negative: components are redundant,
//!   positive: synergetic);
//! - the normalized conditional total correlation `d_B` / `D_B(n)`, which is
//!   zero exactly when components are independent given `Y`;
//! - a constructive per-class linear separator that certifies the
//!   "conditionally independent + zero label uncertainty implies linearly
//!   separable" property of binary representations.
//!
//! Every measure exists twice: an exact oracle on explicit joints
//! ([`oracle::ExactJoint`], capped at 16 components) and a seeded Monte
//! Carlo estimator ([`estim`]) that scales to real encoders. The [`models`]
//! module provides the desk-scale encoders the estimators are pointed at
//! (RBM with CD-1, greedy stacks, discriminative RBM, subset-supervised
//! binary encoders, feature duplication).
//!
//! Math is generic over the scalar type via [`scalar::Real`]; the aliases
//! at the crate root pin the default `f64` instantiations.

pub mod bitdata;
pub mod entropy;
pub mod estim;
pub mod models;
pub mod oracle;
pub mod profile;
pub mod scalar;
pub mod separator;

pub use bitdata::{BitPattern, ComponentSubset, LabelSpace, LabeledBitDataset};
pub use scalar::Real;

/// Default scalar for all information measures.
pub type Scalar = f64;

/// Explicit joint table over the default scalar.
pub type Joint = oracle::ExactJoint<Scalar>;

/// Synthetic symmetric-channel family over the default scalar.
pub type AlphaModel = oracle::AlphaModel<Scalar>;

/// Estimated or exact information profile over the default scalar.
pub type Profile = profile::InformationProfile<Scalar>;

/// Per-class separator built from sign patterns, default scalar.
pub type Separator = separator::SeparatorModel<Scalar>;
