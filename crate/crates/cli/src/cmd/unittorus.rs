use std::path::Path;

use hnnlin::unittorus::zariski_dense_cyclic;

use super::Summary;
use crate::io::emit;

pub fn unittorus_build(m: u64, tol: f64, out: Option<&Path>) -> Summary {
    let cert = zariski_dense_cyclic(m, tol)?;
    emit(&cert, out)?;
    Ok(Some(format!("m = {m}: unit {} + {}·√{m}, orbit rank {}", cert.unit.x, cert.unit.y, cert.rank)))
}
