"""mscbench: benchmark chat-LLM MSC 2020 suggestions against arXiv ground truth."""

__version__ = "0.1.0"
