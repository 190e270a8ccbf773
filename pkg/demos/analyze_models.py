"""Analyze the named model fixtures and print their reports.

Run:  python3 demos/analyze_models.py
"""

from sdual_lab import models, report

for name in ("CP2", "CH2", "C2", "double_plane", "null_pairs"):
    descriptor = models.resolve(name)
    doc = report.document_from_payload(descriptor)
    rep = report.analyze_document(doc, tol=1e-9)
    print(f"--- {name} ({descriptor.name}, alpha={descriptor.alpha}) ---")
    print(report.serialize_report(rep, "text"))
