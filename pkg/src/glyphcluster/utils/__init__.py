from .json_encoder import ReportEncoder
