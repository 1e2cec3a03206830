#!/usr/bin/env python3
# The session layer: collecting judgments pair by pair, surviving a
# restart, and catching concurrent edits. This is what the HTTP service
# wraps; everything here works without a server.

import tempfile
from pathlib import Path

from ahpkit import ConflictError, SessionStore, lls_priorities

snapshot = Path(tempfile.mkdtemp()) / "sessions.json"

store = SessionStore(path=snapshot)
session = store.create_session(
    labels=("vendor a", "vendor b", "vendor c"),
    experts=[
        {"name": "procurement", "alpha": 0.6},
        {"name": "engineering", "alpha": 0.4},
    ],
)
sid = session.session_id
print("created session", sid)

# Judgments arrive one upper-triangle pair at a time. The reciprocal
# cell is derived on read, never stored, so the data on disk can't
# contradict itself.
store.update_judgment(sid, 0, 0, 1, 3.0)
store.update_judgment(sid, 0, 0, 2, 5.0)
store.update_judgment(sid, 0, 1, 2, 2.0)

store.update_judgment(sid, 1, 0, 1, 1.0)
store.update_judgment(sid, 1, 0, 2, 2.0)
store.update_judgment(sid, 1, 1, 2, 4.0)

for e, slot in enumerate(session.experts):
    done = "complete" if slot.complete(session.n) else "in progress"
    print(f"expert {e} ({slot.name}): {len(slot.judgments)} judgments, {done}")

# Process dies, machine reboots... the snapshot file has every write.
reopened = SessionStore(path=snapshot)
restored = reopened.get_session(sid)
print("\nafter reopening the snapshot:")
print("  version", restored.version, "answers intact:", restored.experts[0].judgments)

w = lls_priorities(restored.expert_matrix(0)).w
print("  procurement's weights:", [round(float(x), 4) for x in w])

# Two clients editing the same session: each sends the version it last
# saw. The slower one gets a conflict instead of silently clobbering.
current = restored.version
reopened.update_judgment(sid, 0, 0, 1, 4.0, expected_version=current)
try:
    reopened.update_judgment(sid, 0, 0, 1, 2.0, expected_version=current)
except ConflictError as exc:
    print("\nsecond writer rejected:", exc)
