pub mod cli;
pub mod complex;
pub mod dot;
pub mod engine;
pub mod freewords;
pub mod graph;
pub mod io;
pub mod random;
pub mod simplify;
pub mod sl_move;
