//! Graph families, interchange formats and small-graph corpora.

pub mod generators;
pub mod io;
pub mod iso;
pub mod sample;
