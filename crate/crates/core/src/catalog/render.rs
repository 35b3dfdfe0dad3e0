use std::fmt::Write;

use super::kset::KnReport;
use super::table1::CyclotomicRow;

/// Aligned plaintext with columns `d`, `o_d(2)`, `phi(d)/o_d(2)`, `N_d`.
pub fn render_table1(rows: &[CyclotomicRow]) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:>4} | {:>6} {:>13} {:>4}",
        "d", "o_d(2)", "phi(d)/o_d(2)", "N_d"
    )
    .unwrap();
    writeln!(s, "-----+---------------------------").unwrap();
    for r in rows {
        writeln!(s, "{:>4} | {:>6} {:>13} {:>4}", r.d, r.o, r.cnt, r.nd).unwrap();
    }
    s
}

/// One line per `n`: `n | k1,k2,...`.
pub fn render_table2(reports: &[KnReport]) -> String {
    let mut s = String::new();
    writeln!(s, "{:>3} | elements of K_n", "n").unwrap();
    writeln!(s, "----+----------------").unwrap();
    for r in reports {
        let ks: Vec<String> = r.kset.iter().map(usize::to_string).collect();
        writeln!(s, "{:>3} | {}", r.n, ks.join(",")).unwrap();
    }
    s
}
