//! Structure files, builders, the default corpus and report records.

pub mod builders;
pub mod corpus;
pub mod format;
pub mod report;

pub use builders::{BuildError, GradingMode};
pub use corpus::{default_corpus, CorpusEntry};
pub use format::{load_structure, parse_structure, save_structure, LoadError, Loaded, StructureFile};
