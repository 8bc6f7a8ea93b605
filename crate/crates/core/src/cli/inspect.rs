use std::fmt::Write;

use crate::blackhole::{hawking_temperature, shared_state_direct, squeeze_angle, DilatonParams};
use crate::correlations::Entropies;
use crate::error::Result;
use crate::oracle::overlap_diagnostic;
use crate::qcore::hermitian_eigensystem;

/// Human-readable dump of the detector state at `p`.
pub fn render_state(p: &DilatonParams) -> Result<String> {
    let rho = shared_state_direct(p)?;
    let r = squeeze_angle(p)?;
    let eig = hermitian_eigensystem(rho.matrix())?;
    let ent = Entropies::of(&rho)?;
    let overlap = overlap_diagnostic(p)?;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "# M={} alpha={} omega={} q_R={} q_L={:.12e}",
        p.mass(),
        p.dilaton(),
        p.omega(),
        p.q_r(),
        p.q_l()
    );
    let _ = writeln!(
        s,
        "temperature {:.11e}\ncos_r {:.11e}\nsin_r {:.11e}",
        hawking_temperature(p)?,
        r.cos_r(),
        r.sin_r()
    );
    let _ = writeln!(s, "rho (real part), basis |00>,|01>,|10>,|11>");
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| format!("{:>19.11e}", rho.entry(i, j).re))
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let _ = writeln!(s, "rho (imaginary part)");
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| format!("{:>19.11e}", rho.entry(i, j).im))
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let values: Vec<String> = eig.values.iter().map(|v| format!("{v:.11e}")).collect();
    let _ = writeln!(s, "eigenvalues {}", values.join(" "));
    let _ = writeln!(
        s,
        "entropy_A {:.11e}\nentropy_B {:.11e}\nentropy_AB {:.11e}",
        ent.a, ent.b, ent.joint
    );
    let _ = writeln!(s, "overlap {:.11e} {:+.11e}i", overlap.re, overlap.im);
    Ok(s)
}
