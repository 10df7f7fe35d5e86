//! Flat key-value report documents.
//!
//! One `key value` pair per line, in the order the pairs were pushed.
//! The format is deliberately trivial so reports stay diff-able and
//! golden-testable; `parse(serialize(r)) == r` as long as keys contain
//! no whitespace and values no newlines.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportDocument {
    entries: Vec<(String, String)>,
}

impl ReportDocument {
    pub fn new() -> ReportDocument {
        ReportDocument::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let key = key.into();
        let value = value.into();
        debug_assert!(!key.contains(char::is_whitespace), "report keys must be single tokens");
        debug_assert!(!value.contains('\n'), "report values must be single lines");
        self.entries.push((key, value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push(' ');
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> ReportDocument {
        let mut doc = ReportDocument::new();
        for line in text.lines() {
            if line.is_empty() {
                continue;
            }
            match line.split_once(' ') {
                Some((k, v)) => doc.push(k, v),
                None => doc.push(line, ""),
            }
        }
        doc
    }
}
