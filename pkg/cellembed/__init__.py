"""Right Kazhdan-Lusztig cell embeddings of Bruhat intervals in S_n."""

__version__ = "0.1.0"
