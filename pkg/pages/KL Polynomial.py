import streamlit as st

from cellembed.config import Config
from cellembed.errors import CellEmbedError, GuardExceededError
from cellembed.klpoly import kl_polynomial
from cellembed.perm import Base, bruhat_leq, parse

st.title("KL Polynomial")
st.subheader("Kazhdan-Lusztig polynomial P(x, y) and its mu-coefficient")

config = Config.from_env()

col1, col2 = st.columns(2)

with col1:
    x_text = st.text_input("x", value="[1324]")
    y_text = st.text_input("y", value="[3412]")
    base = st.radio("Letters start at", [Base.ONE, Base.ZERO], format_func=lambda b: "1" if b is Base.ONE else "0",
                    horizontal=True)
    compute = st.button("Compute")

with col2:
    if compute:
        if not x_text.strip() or not y_text.strip():
            st.warning("⚠️ Please enter both permutations.")
        else:
            try:
                x, y = parse(x_text, base), parse(y_text, base)
                polynomial = kl_polynomial(x, y, max_ideal=config.ideal_max)
                gap = y.length - x.length
                mu = polynomial[(gap - 1) // 2] if gap > 0 and gap % 2 else 0
                st.text_area("P(x, y)", value=str(polynomial), height=80, disabled=True)
                st.metric("mu", mu)
                if not bruhat_leq(x, y):
                    st.caption("x is not below y, so the polynomial is zero.")
            except GuardExceededError as e:
                st.error(f"❌ Order ideal too large: {e}")
            except CellEmbedError as e:
                st.error(f"❌ {e}")

st.write("---")
st.markdown("""
<h3>The recursion</h3>
<p>Pick s with sy &lt; y and put v = sy. With c = 1 when sx &lt; x and c = 0 otherwise,</p>
<p style="font-family: monospace;">P(x, y) = q<sup>1-c</sup> P(sx, v) + q<sup>c</sup> P(x, v) - Σ μ(z, v) q<sup>(ℓ(y)-ℓ(z))/2</sup> P(x, z)</p>
<p>summed over z &lt; v with sz &lt; z. Only elements below y are ever visited, up to the
<code>GUARD_IDEAL_MAX</code> limit.</p>

<h3>mu</h3>
<p>μ(x, y) is the coefficient of q<sup>(ℓ(y)-ℓ(x)-1)/2</sup>, the highest degree P(x, y) may reach.
It vanishes when ℓ(y) - ℓ(x) is even. For x = [1324], y = [3412] the answer is 1 + q, the smallest
singular Schubert variety.</p>
""", unsafe_allow_html=True)
