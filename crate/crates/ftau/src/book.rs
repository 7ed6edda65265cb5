//! Runs the code blocks of the book chapters as doc-tests, so the guide and
//! the library cannot drift apart. Only compiled under `cfg(doctest)`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/golden-ring.md")]
pub mod golden_ring {}

#[doc = include_str!("../../../book/src/pl-maps.md")]
pub mod pl_maps {}

#[doc = include_str!("../../../book/src/words-and-normal-forms.md")]
pub mod words_and_normal_forms {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/sigma-oracle.md")]
pub mod sigma_oracle {}

#[doc = include_str!("../../../book/src/subgroups.md")]
pub mod subgroups {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
