//! Training and evaluation of small diffusion language models on continuous
//! token embeddings, plus detectors that flag out-of-distribution text from
//! reconstruction loss and representation statistics.
//!
//! The crate is organized bottom-up:
//!
//! - [`tensor`]: a dense f32 tensor with a reverse-mode autodiff graph and
//!   the Adam optimizer. Everything numeric sits on it.
//! - [`text`]: whitespace tokenization, vocabularies, corpus loading, splits
//!   and corpus statistics.
//! - [`model`]: the transformer denoiser with timestep conditioning, pooled
//!   sentence representations, and optional MLM / classifier heads.
//! - [`diffusion`]: the linear noise schedule, closed-form forward noising,
//!   reconstruction losses, single-pass reconstruction and ancestral sampling.
//! - [`train`]: training loops for the three objectives, checkpointing and
//!   loss-curve logging.
//! - [`detect`]: detector score functions (reconstruction, Mahalanobis,
//!   cosine, MSP, energy, masked-LM) and the AUROC / FAR95 metrics.

pub mod detect;
pub mod diffusion;
pub mod error;
pub mod model;
pub mod parallel;
pub mod rng;
pub mod tensor;
pub mod text;
pub mod train;

pub use error::{Error, Result};
pub use tensor::{Graph, Tensor, Var};
