//! Timed knowledge bases over a continuous time scale: intervals, cuts,
//! partial histories, informative time points and extrapolation problems.

mod interval;
mod kb;

pub use interval::{Interval, IntervalError, IntervalSet, TimePoint};
pub use kb::{
    ExtrapolationProblem, HistoryError, ItpSet, ProblemClass, ProblemError, TimedFormula, TimedKb,
};
