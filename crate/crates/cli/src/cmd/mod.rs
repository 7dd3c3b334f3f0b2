//! One function per subcommand. Each returns the summary line printed to
//! stderr after the JSON output has been written.

mod double;
mod linearize;
mod spectra;
mod unittorus;

pub use double::double;
pub use linearize::{certify, linearize_build, reduce};
pub use spectra::{cartan, gap_fit, jordan, obstruct, tlen};
pub use unittorus::unittorus_build;

use crate::error::CliError;

pub type Summary = Result<Option<String>, CliError>;
