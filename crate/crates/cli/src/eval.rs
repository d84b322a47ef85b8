use std::io::{self, Write};

use clap::ValueEnum;
use qcong::arith::w_number;
use qcong::qobjects::{cyclotomic, q_binomial, q_integer};
use qcong::wpoly::{b_poly, q_w_poly, q_w_poly_alt, schroder_poly, w_alpha_poly, BPolyKey};

use crate::EvalConfig;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalObject {
    /// w_n^(α)(x); --n, optional --alpha
    W,
    /// little Schröder polynomial; --n
    Schroder,
    /// w_k^(α)(x;q); --k, optional --alpha
    Qw,
    /// reflected form of w_k^(α)(x;q); --k, optional --alpha
    QwAlt,
    /// q-integer [n]; --n
    Qint,
    /// q-binomial; --n, --k
    Qbinom,
    /// cyclotomic polynomial; --d
    Cyclotomic,
    /// B_{a,b,d}^(α)(x;q); --a, --b, --d, optional --alpha
    B,
}

impl EvalObject {
    /// (required, optional) inputs.
    fn inputs(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            EvalObject::W => (&["n"], &["alpha"]),
            EvalObject::Schroder | EvalObject::Qint => (&["n"], &[]),
            EvalObject::Qw | EvalObject::QwAlt => (&["k"], &["alpha"]),
            EvalObject::Qbinom => (&["n", "k"], &[]),
            EvalObject::Cyclotomic => (&["d"], &[]),
            EvalObject::B => (&["a", "b", "d"], &["alpha"]),
        }
    }
}

pub(crate) fn check_inputs(config: &EvalConfig) -> Result<(), String> {
    let (required, optional) = config.object.inputs();
    if let Some(missing) = required.iter().find(|k| !config.values.contains_key(*k)) {
        return Err(format!("missing --{missing}"));
    }
    if let Some(extra) = config
        .values
        .keys()
        .find(|k| !required.contains(k) && !optional.contains(k))
    {
        return Err(format!("--{extra} does not apply here"));
    }
    Ok(())
}

pub(crate) fn render(config: &EvalConfig) -> qcong::Result<String> {
    let v = |k: &str| config.values[k];
    let alpha = config.values.get("alpha").copied().unwrap_or(1);
    Ok(match config.object {
        EvalObject::W => w_alpha_poly(v("n"), alpha)?.to_string(),
        EvalObject::Schroder => schroder_poly(v("n"))?.to_string(),
        EvalObject::Qw => q_w_poly(v("k"), alpha)?.to_string(),
        EvalObject::QwAlt => q_w_poly_alt(v("k"), alpha)?.to_string(),
        EvalObject::Qint => q_integer(v("n")).to_string(),
        EvalObject::Qbinom => q_binomial(v("n"), v("k")).to_string(),
        EvalObject::Cyclotomic => cyclotomic(v("d"))?.to_string(),
        EvalObject::B => b_poly(BPolyKey::new(v("a"), v("b"), v("d"), alpha)?).to_string(),
    })
}

pub(crate) fn write_table(nmax: i64, out: &mut dyn Write) -> io::Result<()> {
    for n in 1..=nmax {
        let row: Vec<String> = (1..=n)
            .map(|k| w_number(n, k).expect("1 <= k <= n").to_string())
            .collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}
