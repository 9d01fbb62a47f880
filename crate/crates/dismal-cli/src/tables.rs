//! Rebuilds the reference tables at a configurable size. Each table has a
//! default shape with a golden copy checked in next to the sources; --diff
//! regenerates at the default shape and compares.

use dismal::genfunc::{
    d_series, m_series, near_repunit_divisor_series, repunit_divisor_count,
    repunit_divisor_series, t_count,
};
use dismal::primes::{pi, reduced_templates, templates};
use dismal::structures::phi;
use dismal::{divisors, Error, Num, Result};
use std::fmt::Write as _;

pub const NAMES: [&str; 9] =
    ["pi", "templates", "d-ones", "T", "M", "D", "euler-phi", "d2-series", "divisor-examples"];

#[derive(Debug, Clone, Copy, Default)]
pub struct TableArgs {
    pub base: Option<u8>,
    pub max_k: Option<usize>,
    pub l: Option<usize>,
    pub max_n: Option<usize>,
}

pub fn golden(name: &str) -> Option<&'static str> {
    match name {
        "pi" => Some(include_str!("../goldens/pi.txt")),
        "templates" => Some(include_str!("../goldens/templates.txt")),
        "d-ones" => Some(include_str!("../goldens/d-ones.txt")),
        "T" => Some(include_str!("../goldens/T.txt")),
        "M" => Some(include_str!("../goldens/M.txt")),
        "D" => Some(include_str!("../goldens/D.txt")),
        "euler-phi" => Some(include_str!("../goldens/euler-phi.txt")),
        "d2-series" => Some(include_str!("../goldens/d2-series.txt")),
        "divisor-examples" => Some(include_str!("../goldens/divisor-examples.txt")),
        _ => None,
    }
}

/// True when the arguments the named table reads are all at their defaults,
/// which is the shape the golden copies were generated at.
pub fn is_default_shape(name: &str, args: &TableArgs) -> bool {
    let ok = |v: Option<usize>, d: usize| v.is_none() || v == Some(d);
    match name {
        "pi" => args.base.unwrap_or(10) == 10 && ok(args.max_k, 4),
        "templates" => ok(args.max_k, 6),
        "d-ones" => ok(args.max_k, 7),
        "T" => ok(args.max_k, 8),
        "M" => ok(args.max_k, 12),
        "D" => args.l.is_none() && ok(args.max_n, 8),
        "euler-phi" => ok(args.max_n, 20),
        "d2-series" => ok(args.max_k, 16),
        "divisor-examples" => args.base.unwrap_or(10) == 10 && ok(args.max_n, 12),
        _ => false,
    }
}

pub fn render(name: &str, args: &TableArgs) -> Result<String> {
    match name {
        "pi" => pi_table(args.base.unwrap_or(10), args.max_k.unwrap_or(4)),
        "templates" => template_table(args.max_k.unwrap_or(6)),
        "d-ones" => repunit_table(args.max_k.unwrap_or(7)),
        "T" => t_table(args.max_k.unwrap_or(8)),
        "M" => m_table(args.max_k.unwrap_or(12)),
        "D" => d_table(args.l, args.max_n.unwrap_or(8)),
        "euler-phi" => phi_table(args.max_n.unwrap_or(20)),
        "d2-series" => series_table(args.max_k.unwrap_or(16)),
        "divisor-examples" => divisor_table(args.base.unwrap_or(10), args.max_n.unwrap_or(12)),
        _ => Err(Error::Parse(format!("unknown table {name:?} (one of {})", NAMES.join(", ")))),
    }
}

fn pi_table(base: u8, max_k: usize) -> Result<String> {
    let mut out = String::from("k pi candidates\n");
    for k in 1..=max_k {
        let report = pi(base, k)?;
        writeln!(out, "{k} {} {}", report.count, report.candidate_bound).unwrap();
    }
    Ok(out)
}

fn template_table(max_k: usize) -> Result<String> {
    let mut out = String::from("k count binary reduced\n");
    for k in 2..=max_k {
        let all = templates(k);
        let binary = all.iter().filter(|t| t.is_binary()).count();
        let reduced: Vec<String> = reduced_templates(k).iter().map(|t| t.text()).collect();
        writeln!(out, "{k} {} {binary} {}", all.len(), reduced.join(" ")).unwrap();
    }
    Ok(out)
}

fn repunit_table(max_k: usize) -> Result<String> {
    let mut out = String::from("k b2 b3 b4 b5 b6 b7 b8 b9 b10\n");
    for k in 1..=max_k {
        write!(out, "{k}").unwrap();
        for b in 2..=10 {
            write!(out, " {}", repunit_divisor_count(b, k)).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn t_table(max_k: usize) -> Result<String> {
    let mut out = String::from("k T(k,1)..T(k,k)\n");
    for k in 1..=max_k {
        write!(out, "{k}").unwrap();
        for t in 1..=k {
            write!(out, " {}", t_count(k, t)).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn m_table(max_h: usize) -> Result<String> {
    let columns: Vec<_> = (1..=8).map(|l| m_series(l, max_h + 1)).collect::<Result<_>>()?;
    let mut out = String::from("h l1 l2 l3 l4 l5 l6 l7 l8\n");
    for h in 1..=max_h {
        write!(out, "{h}").unwrap();
        for col in &columns {
            write!(out, " {}", col[h]).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn d_table(l: Option<usize>, max_n: usize) -> Result<String> {
    let ls: Vec<usize> = match l {
        Some(one) => vec![one],
        None => (3..=6).collect(),
    };
    let columns: Vec<_> = ls.iter().map(|&l| d_series(l, max_n + 1)).collect::<Result<_>>()?;
    let mut out = String::from("n");
    for l in &ls {
        write!(out, " l{l}").unwrap();
    }
    out.push('\n');
    for n in 0..=max_n {
        write!(out, "{n}").unwrap();
        for col in &columns {
            write!(out, " {}", col[n]).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn phi_table(max_n: usize) -> Result<String> {
    let mut out = String::from("n phi2 phi10\n");
    for n in 1..=max_n as u64 {
        let p2 = phi(&Num::from_u64(n, 2)?)?;
        let p10 = phi(&Num::from_u64(n, 10)?)?;
        writeln!(out, "{n} {p2} {p10}").unwrap();
    }
    Ok(out)
}

fn series_table(max_k: usize) -> Result<String> {
    let ones = repunit_divisor_series(max_k + 1);
    let minus3 = near_repunit_divisor_series(max_k + 1)?;
    let mut out = String::from("k ones minus3\n");
    for k in 0..=max_k {
        writeln!(out, "{k} {} {}", ones[k], minus3[k]).unwrap();
    }
    Ok(out)
}

fn divisor_table(base: u8, max_n: usize) -> Result<String> {
    let mut out = String::from("n d sigma divisors\n");
    for n in 1..=max_n as u64 {
        let report = divisors::divisor_list(&Num::from_u64(n, base)?)?;
        let list: Vec<String> = report.divisors.iter().map(crate::seq::digit_text).collect();
        writeln!(
            out,
            "{n} {} {} {}",
            report.count(),
            crate::seq::digit_text(&report.sigma),
            list.join(" ")
        )
        .unwrap();
    }
    Ok(out)
}
