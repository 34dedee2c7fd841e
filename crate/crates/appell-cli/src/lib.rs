//! Library surface of the `appell` binary: the output-document
//! serialization shared by the CLI and its integration tests.

pub mod output;
