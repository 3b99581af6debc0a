//! File formats, rendering, test corpora and the command line for
//! [`stairstep_core`].

pub mod cli;
pub mod corpus;
pub mod json;
pub mod render;
