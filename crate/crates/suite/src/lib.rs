//! Home of the acceptance suite; see `tests/acceptance.rs`.
