//! Derived bibliometric analytics: collaboration networks and author
//! indices, pS-cores, link islands, journal bias and profiles, TF-IDF,
//! distributions, and subfield extraction.

pub mod bias;
pub mod collab;
pub mod cores;
pub mod dist;
pub mod islands;
pub mod subfield;
pub mod tfidf;

pub use bias::{journal_bias, journal_subject_percentage, journal_subject_profile, BiasRow};
pub use collab::{author_indices, collaboration_networks, AuthorIndexRow, CollabBundle};
pub use cores::{ps_core, CoreResult};
pub use dist::{bradford_curve, distribution, distribution_of, powerlaw_alpha, DistributionTable};
pub use islands::{link_islands, Island};
pub use subfield::{subfield_pipeline, SubfieldBundle};
pub use tfidf::{tfidf, IdfBase, TfidfRow};
