//! Phase 2 placeholder.
