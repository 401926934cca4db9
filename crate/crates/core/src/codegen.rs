//! Checks from colored polyhedra: a qubit per vertex, a check per face.
//! Red faces carry `X`, green `Y`, blue `Z`.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pauli::{Letter, PauliOperator};
use crate::polyhedron::{Color, Colorings, Polyhedron};

pub fn letter_for(color: Color) -> Letter {
    match color {
        Color::Red => Letter::X,
        Color::Green => Letter::Y,
        Color::Blue => Letter::Z,
    }
}

/// One `+1`-signed check per face, in face order.
pub fn checks_from_polyhedron(p: &Polyhedron) -> Result<Vec<PauliOperator>> {
    p.validate()?;
    p.faces()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let color = f.color.ok_or(Error::UncoloredFace(i + 1))?;
            Ok(PauliOperator::uniform(
                p.n_vertices(),
                &f.vertices,
                letter_for(color),
            ))
        })
        .collect()
}

/// The lexicographically first anticommuting pair (0-based), if any.
pub fn first_anticommuting_pair(checks: &[PauliOperator], exec: Exec) -> Option<(usize, usize)> {
    if let Some(first) = checks.first() {
        assert!(
            checks.iter().all(|c| c.n() == first.n()),
            "checks have different lengths"
        );
    }
    exec.first_pair(checks.len(), |i, j| {
        checks[i].anticommutes_unchecked(&checks[j])
    })
}

/// Whether all checks pairwise commute.
pub fn verify_commuting(checks: &[PauliOperator]) -> bool {
    first_anticommuting_pair(checks, Exec::Sequential).is_none()
}

/// Logical qubits implied by `twist_count` disclinations on a sphere: each
/// twist beyond the first pair adds a factor of √2 to the logical dimension.
pub fn predict_k_from_twists(twist_count: usize) -> Result<usize> {
    if twist_count % 2 == 1 {
        return Err(Error::OddTwistCount(twist_count));
    }
    Ok((twist_count / 2).saturating_sub(1))
}

/// Every check is pure X-type or pure Z-type.
pub fn is_css(checks: &[PauliOperator]) -> bool {
    checks
        .iter()
        .all(|c| c.x_bits().is_zero() || c.z_bits().is_zero())
}

/// Returns `p` if fully colored; otherwise the first proper coloring (in
/// lexicographic order) whose checks commute.
pub fn commuting_coloring(p: &Polyhedron) -> Result<Polyhedron> {
    p.validate()?;
    if p.is_colored() {
        return Ok(p.clone());
    }
    if Colorings::new(p).next().is_none() {
        return crate::polyhedron::color_faces(p);
    }
    // Uniform checks of different letters anticommute exactly when their
    // supports meet in an odd number of qubits.
    let supports: Vec<Vec<usize>> = p.faces().iter().map(|f| f.sorted_support()).collect();
    let mut ties = Vec::new();
    for (a, sa) in supports.iter().enumerate() {
        for (b, sb) in supports.iter().enumerate().skip(a + 1) {
            if sa.iter().filter(|v| sb.binary_search(v).is_ok()).count() % 2 == 1 {
                ties.push((a, b));
            }
        }
    }
    for colors in Colorings::with_ties(p, &ties) {
        let candidate = p.with_colors(&colors);
        if verify_commuting(&checks_from_polyhedron(&candidate)?) {
            return Ok(candidate);
        }
    }
    Err(Error::NoCommutingColoring)
}
