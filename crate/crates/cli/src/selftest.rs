use std::io::{self, Write};

use qcong::arith::IdentityReport;
use qcong::engine::{grid_verify, GridSpec, Statement};
use qcong::wpoly::{even_index_check, schroder_check, squared_sum_check, symmetry_check};

type IdentityCheck = fn(i64) -> qcong::Result<IdentityReport>;

fn suites() -> Vec<GridSpec> {
    use Statement::*;
    let g = GridSpec::new;
    vec![
        g(QsumPlain)
            .range("n", 2, 8)
            .range("alpha", 1, 2)
            .range("m", 1, 2)
            .range("r", 1, 2),
        g(QsumAlternating)
            .range("n", 2, 8)
            .range("alpha", 1, 2)
            .range("m", 1, 2),
        g(QsumProduct)
            .range("n", 2, 8)
            .range("alpha", 1, 2)
            .range("m", 1, 2),
        g(QsumGeneral).range("n", 2, 6).range("beta", 1, 2),
        g(IntPlain)
            .range("n", 1, 12)
            .range("alpha", 1, 2)
            .range("m", 1, 2)
            .range("r", 1, 2),
        g(IntAlternating)
            .range("n", 1, 12)
            .range("alpha", 1, 2)
            .range("m", 1, 2)
            .range("r", 1, 2),
        g(IntLcm).range("n", 1, 8).range("beta", 1, 2),
        g(Lemma23)
            .range("a", 0, 1)
            .range("b", 0, 5)
            .range("d", 3, 7),
        g(Lemma31).range("d", 2, 20),
        g(LemmaQLucas)
            .range("d", 2, 5)
            .range("a", 0, 2)
            .range("b", 0, 4)
            .range("s", 0, 2)
            .range("t", 0, 4),
        g(Conj52Even).range("n", 2, 8).range("alpha", 2, 3),
        g(Conj54Ii).range("n", 1, 8).range("m", 1, 2),
        g(Conj54Iii).range("n", 2, 10),
        g(IdentitySuite)
            .range("n", 1, 8)
            .range("m", 1, 8)
            .range("b", 0, 3),
    ]
}

fn line(out: &mut dyn Write, name: &str, passed: usize, total: usize) -> io::Result<bool> {
    let ok = passed == total;
    writeln!(
        out,
        "{} {name} ({passed}/{total})",
        if ok { "PASS" } else { "FAIL" }
    )?;
    Ok(ok)
}

/// Runs each suite and prints one line per suite; returns whether all passed.
pub(crate) fn run(out: &mut dyn Write) -> io::Result<bool> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut all = true;
    for spec in suites() {
        let name = spec.statement.id();
        match grid_verify(&spec.workers(workers)) {
            Ok(v) => all &= line(out, name, v.iter().filter(|x| x.pass).count(), v.len())?,
            Err(e) => {
                writeln!(out, "FAIL {name} ({e})")?;
                all = false;
            }
        }
    }
    let checks: [(&str, IdentityCheck); 4] = [
        ("schroder", schroder_check),
        ("symmetry", symmetry_check),
        ("squared-sum", squared_sum_check),
        ("even-index", even_index_check),
    ];
    for (name, check) in checks {
        let results: Vec<bool> = (1..=12).map(|n| check(n).is_ok_and(|r| r.holds)).collect();
        all &= line(
            out,
            name,
            results.iter().filter(|&&b| b).count(),
            results.len(),
        )?;
    }
    Ok(all)
}
