//! Driver placeholder.
pub struct RunConfig;
pub struct RunResult;
pub enum CheckKind {}
pub enum CheckStatus {}
pub fn run() {}
pub fn trials() {}
