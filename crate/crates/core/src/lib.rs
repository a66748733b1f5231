//! Laplacian state transfer on blow-up graphs.
//!
//! The crate decides periodicity, strong cospectrality, perfect state
//! transfer (LPST) and pretty good state transfer (LPGST) for vertices of
//! blow-ups `B_n(G)`, and checks every decision against a dense
//! continuous-time quantum walk `U(t) = exp(-itL)`.

pub mod arith;
pub mod graph;
pub mod spectra;
pub mod transfer;
pub mod walk;
pub mod cli;
