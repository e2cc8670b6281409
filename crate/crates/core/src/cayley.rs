//! Plain-text Cayley-table files.
//!
//! Line 1 holds the order N; the next N lines are the addition table rows and
//! the N after that the multiplication table rows, each row N space-separated
//! element indices. Lines starting with `#` are comments. [`write_tables`]
//! emits exactly this shape with no comments, so its output re-loads
//! bit-identically.

use thiserror::Error;

use crate::ring::{FiniteRing, RingError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub fn write_tables(ring: &FiniteRing) -> String {
    let mut out = String::new();
    out.push_str(&ring.order().to_string());
    out.push('\n');
    for table in [ring.add_table(), ring.mul_table()] {
        for row in table {
            let line: Vec<String> = row.iter().map(u16::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Parses the raw tables without validating ring axioms.
pub fn parse_tables(text: &str) -> Result<(Vec<Vec<u16>>, Vec<Vec<u16>>), CayleyError> {
    let mut rows: Vec<(usize, Vec<u16>)> = Vec::new();
    let mut order: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let numbers: Result<Vec<u16>, _> = line.split_whitespace().map(str::parse).collect();
        let numbers = numbers.map_err(|e| CayleyError::Parse {
            line: line_no,
            reason: format!("expected space-separated indices: {e}"),
        })?;
        match order {
            None => {
                if numbers.len() != 1 {
                    return Err(CayleyError::Parse {
                        line: line_no,
                        reason: format!(
                            "first data line must hold the order alone, got {} numbers",
                            numbers.len()
                        ),
                    });
                }
                order = Some(numbers[0] as usize);
            }
            Some(n) => {
                if numbers.len() != n {
                    return Err(CayleyError::Parse {
                        line: line_no,
                        reason: format!("expected {n} entries, got {}", numbers.len()),
                    });
                }
                if rows.len() == 2 * n {
                    return Err(CayleyError::Parse {
                        line: line_no,
                        reason: format!("unexpected data after {} table rows", 2 * n),
                    });
                }
                rows.push((line_no, numbers));
            }
        }
    }
    let n = order.ok_or(CayleyError::Parse {
        line: text.lines().count() + 1,
        reason: "empty file".to_string(),
    })?;
    if rows.len() != 2 * n {
        return Err(CayleyError::Parse {
            line: text.lines().count() + 1,
            reason: format!("expected {} table rows, found {}", 2 * n, rows.len()),
        });
    }
    let mut rows: Vec<Vec<u16>> = rows.into_iter().map(|(_, r)| r).collect();
    let mul = rows.split_off(n);
    Ok((rows, mul))
}

/// Parses and validates, returning the ring and the relabeling permutation.
pub fn load_ring(text: &str) -> Result<(FiniteRing, Vec<u16>), CayleyError> {
    let (add, mul) = parse_tables(text)?;
    Ok(FiniteRing::from_tables(&add, &mul)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::t2_tables;

    fn t2() -> FiniteRing {
        let (add, mul) = t2_tables();
        FiniteRing::from_tables(&add, &mul).unwrap().0
    }

    #[test]
    fn round_trip_is_bit_identical() {
        let ring = t2();
        let text = write_tables(&ring);
        let (reloaded, perm) = load_ring(&text).unwrap();
        assert_eq!(perm, (0..8).collect::<Vec<u16>>());
        assert_eq!(reloaded, ring);
        assert_eq!(write_tables(&reloaded), text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let ring = t2();
        let mut text = String::from("# cayley tables\n\n");
        for line in write_tables(&ring).lines() {
            text.push_str(line);
            text.push_str("\n# interleaved comment\n");
        }
        let (reloaded, _) = load_ring(&text).unwrap();
        assert_eq!(reloaded, ring);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_tables("").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { .. }));
        let err = parse_tables("2\n0 1\n1 0\n0 0\n0 x\n").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { line: 5, .. }));
        let err = parse_tables("2\n0 1 1\n").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { line: 2, .. }));
        let err = parse_tables("2\n0 1\n1 0\n0 0\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { line: 6, .. }));
        let err = parse_tables("2\n0 1\n1 0\n0 0\n").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { .. }));
    }

    #[test]
    fn axiom_failures_surface_through_load() {
        let text = "2\n0 1\n1 0\n0 0\n0 0\n";
        let err = load_ring(text).unwrap_err();
        assert!(matches!(err, CayleyError::Ring(RingError::NoUnity)));
    }
}
