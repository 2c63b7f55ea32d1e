pub mod diagonalize;
pub mod ground_state;
pub mod spectrum;
pub mod verify;

use crate::output::Report;

pub struct Outcome {
    pub report: Report,
    /// False when a tolerance was breached; the report is still printed.
    pub pass: bool,
}
