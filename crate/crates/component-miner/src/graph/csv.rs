//! CSV invocation logs: `caller,callee[,count]` with a mandatory header.
//!
//! Elements are inferred from the names mentioned in rows; one edge is
//! produced per distinct (caller, callee) pair with weight = sum of counts.
//! A missing count column defaults to 1. Names must not contain commas;
//! no quoting is supported.

use super::{ElementId, GraphBuilder, GraphError, ParseOutput};

/// Parses an invocation log into a graph.
pub fn ingest_invocation_log(csv_text: &str) -> Result<ParseOutput, GraphError> {
    let csv_text = csv_text.strip_prefix('\u{feff}').unwrap_or(csv_text);
    let mut lines = csv_text.lines().enumerate();

    let (header_line, header) = loop {
        match lines.next() {
            Some((_, line)) if line.trim().is_empty() => continue,
            Some((idx, line)) => break (idx + 1, line),
            None => {
                return Err(GraphError::CsvFormat {
                    line: 1,
                    message: "missing header `caller,callee[,count]`".into(),
                })
            }
        }
    };
    let header_fields: Vec<&str> = header.split(',').map(str::trim).collect();
    let header_ok = matches!(
        header_fields.as_slice(),
        ["caller", "callee"] | ["caller", "callee", "count"]
    );
    if !header_ok {
        return Err(GraphError::CsvFormat {
            line: header_line,
            message: format!(
                "missing header `caller,callee[,count]` (got `{}`)",
                header.trim()
            ),
        });
    }

    let mut builder = GraphBuilder::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let (caller, callee, count) = match fields.as_slice() {
            [caller, callee] => (*caller, *callee, 1u64),
            [caller, callee, count] => {
                let count = count.parse::<u64>().map_err(|_| GraphError::CsvFormat {
                    line: line_no,
                    message: format!("non-integer count `{count}`"),
                })?;
                if count == 0 {
                    return Err(GraphError::CsvFormat {
                        line: line_no,
                        message: "count must be at least 1".into(),
                    });
                }
                (*caller, *callee, count)
            }
            other => {
                return Err(GraphError::CsvFormat {
                    line: line_no,
                    message: format!("expected 2 or 3 fields, got {}", other.len()),
                })
            }
        };
        if caller.is_empty() {
            return Err(GraphError::CsvFormat {
                line: line_no,
                message: "empty caller field".into(),
            });
        }
        if callee.is_empty() {
            return Err(GraphError::CsvFormat {
                line: line_no,
                message: "empty callee field".into(),
            });
        }
        let caller = ElementId::new(caller).expect("trimmed non-empty");
        let callee = ElementId::new(callee).expect("trimmed non-empty");
        builder.touch_element(caller.clone());
        builder.touch_element(callee.clone());
        builder.add_edge(caller, callee, count, &format!("line {line_no}"))?;
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_is_an_empty_graph() {
        let out = ingest_invocation_log("caller,callee,count\n").unwrap();
        assert_eq!(out.graph.element_count(), 0);
        assert_eq!(out.graph.edge_count(), 0);
    }

    #[test]
    fn counts_sum_per_pair() {
        // Oracle: sum counts per (caller, callee) -> {(W1, D1): 4 + 6 = 10}.
        let out = ingest_invocation_log("caller,callee,count\nW1,D1,4\nW1,D1,6\n").unwrap();
        assert_eq!(out.graph.edge_count(), 1);
        assert_eq!(out.graph.weight("W1", "D1"), 10);
    }

    #[test]
    fn self_invocation_is_dropped() {
        let out = ingest_invocation_log("caller,callee,count\nA,A,5\n").unwrap();
        assert_eq!(out.graph.element_count(), 1);
        assert_eq!(out.graph.edge_count(), 0);
        assert_eq!(out.warnings.len(), 1);
    }

    #[test]
    fn missing_count_defaults_to_one() {
        let out = ingest_invocation_log("caller,callee\nA,B\nA,B\n").unwrap();
        assert_eq!(out.graph.weight("A", "B"), 2);
    }

    #[test]
    fn missing_header_is_an_error() {
        let err = ingest_invocation_log("W1,D1,4\n").unwrap_err();
        assert!(err.to_string().contains("header"));
        assert!(ingest_invocation_log("").is_err());
    }

    #[test]
    fn leading_bom_is_tolerated() {
        let out = ingest_invocation_log("\u{feff}caller,callee\nA,B\n").unwrap();
        assert_eq!(out.graph.weight("A", "B"), 1);
    }

    #[test]
    fn bad_rows_report_line_numbers() {
        let err = ingest_invocation_log("caller,callee,count\nA,B,x\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::CsvFormat {
                line: 2,
                message: "non-integer count `x`".into()
            }
        );

        let err = ingest_invocation_log("caller,callee,count\nA,,3\n").unwrap_err();
        assert!(err.to_string().contains("empty callee"));

        let err = ingest_invocation_log("caller,callee\n,B\n").unwrap_err();
        assert!(err.to_string().contains("empty caller"));

        let err = ingest_invocation_log("caller,callee,count\nA,B,0\n").unwrap_err();
        assert!(err.to_string().contains("at least 1"));
    }
}
