import json

import streamlit as st

from cellembed.config import Config
from cellembed.embed import embed, trace_to_json, verify_trace
from cellembed.errors import CellEmbedError
from cellembed.perm import Base, format_permutation, parse

st.title("Cell Embedding")
st.subheader("Embed [x, y] into an interval [v, w] whose endpoints share a P symbol")

config = Config.from_env()

col1, col2 = st.columns(2)

with col1:
    x_text = st.text_input("x", value="[21654387]")
    y_text = st.text_input("y", value="[62845173]")
    base = st.radio("Letters start at", [Base.ONE, Base.ZERO], format_func=lambda b: "1" if b is Base.ONE else "0",
                    horizontal=True)
    full = st.checkbox("Compare the intervals as posets (slow for big N)")
    compute = st.button("Embed")

if compute:
    if not x_text.strip() or not y_text.strip():
        st.warning("⚠️ Please enter both permutations.")
    else:
        try:
            x, y = parse(x_text, base), parse(y_text, base)
            trace = embed(x, y)
            report = verify_trace(trace, config, full=full)
            st.session_state.embedding = (trace, report, base)
        except CellEmbedError as e:
            st.error(f"❌ {e}")
            st.session_state.pop("embedding", None)

if "embedding" in st.session_state:
    trace, report, shown_base = st.session_state.embedding
    with col2:
        st.text_input("v", value=format_permutation(trace.v, shown_base), disabled=True)
        st.text_input("w", value=format_permutation(trace.w, shown_base), disabled=True)
        st.caption(f"N = {trace.N} after {len(trace.steps)} step(s)")
        if report.passed:
            st.success("✅ All checks passed")
        else:
            st.error("❌ Failed: " + ", ".join(sorted(report.failures)))
        st.download_button(
            "Download trace (JSON)",
            data=json.dumps(trace_to_json(trace, shown_base, report.checks), indent=2),
            file_name="trace.json",
            mime="application/json",
        )

    st.table([
        {
            "step": step.index + 1,
            "k": step.k,
            "t": step.t,
            "n": f"{step.n_in} → {step.n_out}",
            "x'": format_permutation(step.x_out, shown_base),
            "y'": format_permutation(step.y_out, shown_base),
        }
        for step in trace.steps
    ])
    st.table([{"check": name, "result": "ok" if ok else report.failures.get(name, "failed")}
              for name, ok in report.checks.items()])
    for name, reason in report.skipped.items():
        st.warning(f"{name} skipped: {reason}")

st.write("---")
st.markdown("""
<h3>One step</h3>
<p>Let k be the largest value such that every entry ≤ k sits in the same cell of P(x) and P(y), and
t = max(c<sub>P(x)</sub>(k+1), c<sub>P(y)</sub>(k+1)) - 1. The new permutation x' starts with
k+1, ..., k+t and continues with x, where every value above k is raised by t; y' is built the same way.</p>
<ul>
<li>x and y reappear as the patterns of x' and y' in the last n positions.</li>
<li>ℓ(y') - ℓ(x') = ℓ(y) - ℓ(x), each side gaining k·t inversions.</li>
<li>P(x') and P(y') agree at least up to k + t + 1, so n - k strictly drops.</li>
</ul>
<p>The steps repeat until the P symbols coincide, at most n - 1 times, so N ≤ n(n+1)/2.
When x ≤ y the result is an interval pattern embedding: [x, y] and [v, w] are isomorphic posets.</p>
""", unsafe_allow_html=True)
