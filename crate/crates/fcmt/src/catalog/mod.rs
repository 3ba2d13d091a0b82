//! The classification data: ring types, rank tables, presentations of the
//! monoids of MCM modules and the rank solver for AR sequences.

mod ar;
mod glue;
mod matching;
mod paper;
mod presentation;
mod ranks;
mod types;

pub use ar::{ar_rank_solve, d6_system, ArSequence, ArSequenceSystem, ArSolution};
pub use glue::{GlueSpec, GLUE_GRAMMAR};
pub use matching::{presentations_match, MatchResult, MismatchReport};
pub use paper::{expected_verdict, monoid_table, paper_matrix, PaperMatrixId, TableRow, Verdict};
pub use presentation::{monoid_presentation, CatalogPresentation};
pub use ranks::{rank_table, RankTable};
pub use types::{Family, RingType, TYPE_GRAMMAR};
