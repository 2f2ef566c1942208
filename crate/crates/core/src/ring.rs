//! Phase 1 placeholder.
