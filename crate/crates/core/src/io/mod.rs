//! Document formats and job configuration for batch use.

mod document;
mod report;

use std::path::PathBuf;

pub use document::{parse_matrix_form, serialize_matrix_form};
pub use report::{
    emit_clean_grid, emit_counterexample, emit_margin, emit_pure_state_scan, emit_report,
    emit_verification, parse_certificate, EmitOptions,
};

use crate::certify::SearchOptions;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Certify,
    RefuteOnly,
    Margin,
    PureStateScan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub m_max: u32,
    pub grid_depth: u32,
    pub mode: Mode,
    pub output_path: Option<PathBuf>,
    pub emit: EmitOptions,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            m_max: 50,
            grid_depth: 16,
            mode: Mode::Certify,
            output_path: None,
            emit: EmitOptions::default(),
        }
    }
}

impl JobConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_depth == 0 {
            return Err(Error::parse("grid_depth", "must be at least 1"));
        }
        Ok(())
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            m_max: self.m_max,
            grid_depth: self.grid_depth,
            ..SearchOptions::default()
        }
    }
}
