//! Parsers and writers for the external data formats: CTM hypothesis files,
//! STM reference files, ARPA backoff language models, n-best lists, and the
//! TSV side-score files that carry externally computed LM scores.
//!
//! Field separators are any run of ASCII whitespace and trailing whitespace
//! is ignored, matching the leniency of the NIST tools. Parsers never drop a
//! malformed record silently: every skipped line is a `;;` comment or blank,
//! and anything else either parses or raises an error carrying the 1-based
//! line number.

pub mod arpa;
pub mod ctm;
pub mod nbest;
pub mod stm;

pub use arpa::{read_arpa, write_arpa};
pub use ctm::{parse_ctm, write_ctm, CtmEntry};
pub use nbest::{attach_side_scores, parse_nbest, write_nbest, NBestEntry, NBestLists};
pub use stm::{parse_stm, write_stm, StmSegment, EXCLUSION_TOKEN};
