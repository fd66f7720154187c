//! Text rendering shared by the report types: significant-digit formatting,
//! RFC 4180 CSV and fixed-width tables.

use crate::error::{Error, Result};

/// Default number of significant digits for human-readable output.
pub const SIG_DIGITS: usize = 6;

/// Formats `x` with `digits` significant digits, in plain decimal notation
/// for moderate magnitudes and scientific notation otherwise.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

pub fn sig6(x: f64) -> String {
    sig(x, SIG_DIGITS)
}

/// Writes a header and rows as RFC 4180 CSV.
pub fn csv_string<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Data(format!("csv encoding failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.iter().map(|c| c.as_ref())).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Data(format!("csv encoding failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Left-aligned first column, right-aligned remainder.
pub fn fixed_width_table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.as_ref().chars().count());
        }
    }
    let render = |cells: Vec<&str>| {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i == 0 {
                line.push_str(&format!("{cell:<w$}"));
            } else {
                line.push_str(&format!("  {cell:>w$}"));
            }
        }
        line.trim_end().to_string()
    };
    let mut out = render(header.to_vec());
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&render(row.iter().map(|c| c.as_ref()).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig6(0.020_188_123), "0.0201881");
        assert_eq!(sig6(-229.371_128), "-229.371");
        assert_eq!(sig6(2.201_341e-5), "0.0000220134");
        assert_eq!(sig6(1.234_567e-7), "1.23457e-7");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(9.999_999_9), "10.0000");
        assert_eq!(sig6(123_456_789.0), "123456789");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let s = csv_string(&["model", "par"], &[vec!["agr", "omega=1, psi=2"]]).unwrap();
        assert_eq!(s, "model,par\r\nagr,\"omega=1, psi=2\"\r\n");
    }

    #[test]
    fn table_alignment() {
        let t = fixed_width_table(&["a", "bb"], &[vec!["xyz", "1"]]);
        assert_eq!(t, "a    bb\n-------\nxyz   1\n");
    }
}
