from beta_numeration.whisper.whisper import whisper

__all__ = ["whisper"]
