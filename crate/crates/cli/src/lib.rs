//! Support code for the `nccov` command-line tool.

pub mod demo;
