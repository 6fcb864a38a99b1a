"""disinfo-exchange: a self-hostable exchange for disinformation incidents.

Incidents are captured as (name, date, actors, target countries, DISARM
techniques), stored as a STIX 2.1 graph, and shared over an incremental
pull feed that downstream CTI tooling can poll.
"""

__version__ = "0.1.0"
