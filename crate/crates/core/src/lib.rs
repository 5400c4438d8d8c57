//! Defender policy synthesis for timed temporal objectives on stochastic
//! games under actuator and timing attacks.
//!
//! The pipeline, end to end:
//!
//! 1. [`mitl`] parses a metric interval temporal logic specification and
//!    evaluates it on finite timed words (three-valued, exact rationals).
//! 2. [`tba`] represents timed Büchi automata and builds one for the
//!    supported bounded fragment of the logic.
//! 3. [`dsg`] holds the durational stochastic game model of the plant and
//!    the Monte-Carlo abstraction builder for black-box dynamics.
//! 4. [`product`] composes game × automaton × quantized clock valuations.
//! 5. [`fsc`] is the defender's finite state controller: clock-valuation
//!    estimates plus a latching timing-attack detection bit.
//! 6. [`gdsg`] composes the product with the controller memory into the
//!    global game whose columns carry the adversary's timestamp shifts.
//! 7. [`gamec`] finds generalized accepting maximal end components, the
//!    value-1 target set of the reachability reformulation.
//! 8. [`solver`] runs max-min value iteration with per-state matrix-game
//!    LPs and extracts the controller tables.
//! 9. [`sim`] replays the synthesized controller against adversary
//!    strategies and estimates satisfaction empirically.
//! 10. [`bench`] ships the two built-in case studies (signalized traffic
//!     network, two-tank system).

pub mod bench;
pub mod dsg;
pub mod fsc;
pub mod game;
pub mod gamec;
pub mod gdsg;
pub mod mitl;
pub mod model;
pub mod product;
pub mod rat;
pub mod sim;
pub mod solver;
pub mod tba;
pub mod testkit;

pub use rat::Rat;
