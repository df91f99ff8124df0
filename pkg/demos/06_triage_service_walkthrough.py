"""The triage queue end to end, in one process.

Stands up the case store and HTTP app with a stub segmenter, submits three
phantom studies, drains the worker, and walks the clinician flow: the
severity-ordered queue, case detail with bleeding volume, an overlay
image, and a decision (plus the conflict on deciding twice).
"""

import tempfile
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from ctriage import inference
from ctriage.config import PipelineConfig, ServiceConfig
from ctriage.phantoms import PhantomSpec, generate_phantoms
from ctriage.preprocess import MaskImage
from ctriage.service import CaseStore
from ctriage.service.app import create_app

workdir = Path(tempfile.mkdtemp(prefix="triage-demo-"))
corpus = generate_phantoms(PhantomSpec(patient_count=3, slices_per_patient=6, seed=55), workdir / "corpus")

severities = iter((4.9, 0.2, 1.7))


def stub_segmenter(series_path: str, out_dir: Path) -> tuple[float, int]:
    """Stand-in for the real model path: fixed masks, scripted severities."""
    values = np.zeros((64, 64), dtype=np.uint8)
    values[20:40, 20:44] = 1
    result = inference.StudyResult(
        patient_id=Path(series_path).name,
        findings=[
            inference.OrganFinding("liver", [MaskImage(values, "liver")]),
            inference.OrganFinding("liver_laceration", [MaskImage(values // 2, "liver_laceration")]),
        ],
        provenance={"liver": "0" * 64},
        created_at="2026-02-01T00:00:00+00:00",
    )
    gray = np.full((64, 64), 120, dtype=np.uint8)
    inference.save_study_result(result, out_dir, [gray])
    return next(severities), 1


config = PipelineConfig(
    service=ServiceConfig(store_path=str(workdir / "triage.db"), data_dir=str(workdir / "data"))
)
store = CaseStore(config.service.store_path)
app = create_app(store, config, segmenter=stub_segmenter)
client = TestClient(app)

for patient_dir in sorted((corpus.directory / "patients").iterdir()):
    files = [("files", (p.name, p.read_bytes(), "application/dicom")) for p in sorted(patient_dir.iterdir())]
    response = client.post("/studies", files=files)
    print(f"submitted {patient_dir.name}: case {response.json()['case_id']} ({response.json()['status']})")

print(f"\nworker drained {app.state.worker.run_until_idle()} cases")

queue = client.get("/cases", params={"status": "ready"}).json()
print("\nqueue (severity descending):")
for item in queue["cases"]:
    print(f"  {item['case_id']}  severity {item['severity']} mL  patient {item['patient_ref']}")

top = queue["cases"][0]["case_id"]
detail = client.get(f"/cases/{top}").json()
print(f"\ntop case {top}: findings {[f['organ_label'] for f in detail['study']['findings']]}")

overlay = client.get(f"/cases/{top}/overlays/0")
print(f"overlay/0: {overlay.headers['content-type']}, {len(overlay.content)} bytes")

decided = client.post(f"/cases/{top}/decision", json={"decision": "immediate_intervention", "clinician_id": "dr-demo"})
print(f"decision recorded: {decided.json()['decision']} by {decided.json()['clinician_id']}")

conflict = client.post(f"/cases/{top}/decision", json={"decision": "routine", "clinician_id": "dr-late"})
print(f"second decision attempt -> HTTP {conflict.status_code} ({conflict.json()['code']})")
