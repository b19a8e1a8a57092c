from .orchestrator import Orchestrator
