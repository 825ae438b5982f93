//! Enumeration of method execution orders in nested-call notation.

use super::GraphError;

/// Returns every ordered sequence of distinct methods of length 1..=k,
/// rendered in nested-call notation (`m1(m2())` means m1 invokes m2), in
/// lexicographic order of the underlying index sequence.
///
/// For k methods the result has `sum over j of k!/(k-j)!` entries, so this is
/// only practical for small k.
pub fn enumerate_execution_orders(methods: &[String]) -> Result<Vec<String>, GraphError> {
    if methods.is_empty() {
        return Err(GraphError::EmptyMethodList);
    }
    let mut seen = std::collections::BTreeSet::new();
    for m in methods {
        if !seen.insert(m.as_str()) {
            return Err(GraphError::DuplicateMethodName(m.clone()));
        }
    }

    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let mut used = vec![false; methods.len()];
    extend(methods, &mut prefix, &mut used, &mut out);
    Ok(out)
}

fn extend(methods: &[String], prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<String>) {
    for i in 0..methods.len() {
        if used[i] {
            continue;
        }
        prefix.push(i);
        used[i] = true;
        out.push(render(prefix, methods));
        extend(methods, prefix, used, out);
        prefix.pop();
        used[i] = false;
    }
}

fn render(seq: &[usize], methods: &[String]) -> String {
    let mut s = String::new();
    for &i in seq {
        s.push_str(&methods[i]);
        s.push('(');
    }
    for _ in seq {
        s.push(')');
    }
    s
}
