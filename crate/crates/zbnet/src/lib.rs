//! Bibliographic network toolkit: ingestion of field-tagged records,
//! entity resolution (authors, journals, keywords), sparse two-mode
//! network construction, and the derived bibliometric analytics
//! (collaboration networks, cores, islands, biases, TF-IDF,
//! distributions), with Pajek-format I/O.

pub mod analytics;
pub mod builder;
pub mod entity;
pub mod error;
pub mod net;
pub mod pajek;
pub mod record;
pub mod sparse;
pub mod tex;
