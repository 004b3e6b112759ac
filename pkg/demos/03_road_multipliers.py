"""Road multipliers from season records.

The multiplier is road winning percentage over home winning percentage.
Two bundled CSVs hold the extreme-multiplier playoff teams and the
1995-2006 World Series champions.
"""
from seriesfair import average_road_multiplier, load_records, road_multiplier
from seriesfair.records import R_PAPER, bundled_path

champions = load_records(bundled_path("champions"))
for rec in champions:
    print(f"{rec.label:<20} {rec.home_record:>6} {rec.road_record:>6} {road_multiplier(rec):.9f}")
print(f"champions mean: {average_road_multiplier(champions):.9f}")

extremes = load_records(bundled_path("extremes"))
print(f"extremes mean:  {average_road_multiplier(extremes):.9f}")

# The full 96-team list is not bundled; the analysis default is its published mean.
print(f"default r:      {R_PAPER}")
